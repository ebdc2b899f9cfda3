"""
Licensing

Copyright 2020 Esri

Licensed under the Apache License, Version 2.0 (the "License"); You
may not use this file except in compliance with the License. You may
obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
implied. See the License for the specific language governing
permissions and limitations under the License.

A copy of the license is available in the repository's
LICENSE file.

Write the verdict census for every small universe to parquet, then run a seeded sample sweep at n = 4.
"""
from configparser import ConfigParser
import logging
from pathlib import Path
import importlib.util
import sys

# path to the root of the project
dir_prj = Path(__file__).parent.parent

# if the project package is not installed in the environment
if importlib.util.find_spec('choice_tools') is None:

    # get the relative path to where the source directory is located
    src_dir = dir_prj / 'src'

    # throw an error if the source directory cannot be located
    if not src_dir.exists():
        raise EnvironmentError('Unable to import choice_tools.')

    # add the source directory to the paths searched when importing
    sys.path.insert(0, str(src_dir))

import choice_tools
from choice_tools.utils import build_data_directory, configure_logging, format_pandas_for_logging

# read and configure
config = ConfigParser()
config.read(Path(__file__).parent / 'config.ini')

log_level = config.get('DEFAULT', 'LOG_LEVEL')
output_dir = dir_prj / config.get('DEFAULT', 'OUTPUT_DATA')
max_census_n = config.getint('DEFAULT', 'MAX_CENSUS_N')
sample_count = config.getint('DEFAULT', 'SAMPLE_COUNT')
seed = config.getint('DEFAULT', 'SEED')
shards = config.getint('DEFAULT', 'SHARDS')

# use the log level from the config to set up logging
logger = configure_logging(log_level)

if __name__ == '__main__':

    build_data_directory(output_dir)

    # tabulate every table for the small universes
    for n in range(2, max_census_n + 1):
        census = choice_tools.oracle.census_frame(n)
        out_path = output_dir / f'census_n{n}.parquet'
        census.to_parquet(out_path, index=False)
        logger.info(f'Saved census of {len(census)} tables to "{out_path}"')

    # cross check the characterization on a seeded sample of the four alternative census
    report = choice_tools.oracle.theorem1_sweep(4, mode='sample', count=sample_count, seed=seed, shards=shards)
    logger.info(format_pandas_for_logging(report.to_frame(), title='Sample sweep, n=4'))

    if not report.ok:
        logger.error(f'Sweep found {len(report.discrepancies)} discrepancies.')
        sys.exit(1)
