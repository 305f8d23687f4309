"""
Main script for the volatility-lab command line
"""
import logging
import sys
from typing import Optional
import click
from api.commands.ann import train_ann
from api.commands.data import describe, diagnose, simulate
from api.commands.forecast import compare, forecast
from api.commands.garch import fit_garch, search_garch
from api.commands.pipeline import pipeline
from core import config

LOG_LEVELS: list[str] = ["DEBUG", "INFO", "WARNING", "ERROR"]


def configure_logging(level: Optional[str] = None) -> None:
    """
    Send log records to stderr so artifacts on stdout stay clean
    :param level: level name overriding the LOG_LEVEL setting
    :type level: str
    :return: None
    :rtype: NoneType
    """
    setting: config.Settings = config.get_setting()
    logging.basicConfig(
        level=(level or setting.LOG_LEVEL).upper(),
        format=setting.LOG_FORMAT, stream=sys.stderr, force=True)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--log-level", type=click.Choice(LOG_LEVELS,
                                               case_sensitive=False),
              help="Overrides the LOG_LEVEL setting.")
@click.version_option("1.0.0", prog_name=config.get_setting().PROJECT_NAME)
def cli(log_level: Optional[str]) -> None:
    """
    Conditional volatility toolkit: GARCH family estimation and lag order
    search, small neural network forecasters, rolling one-step-ahead
    forecasts and their comparison.
    \f
    :param log_level: logging level name
    :type log_level: str
    :return: None
    :rtype: NoneType
    """
    configure_logging(log_level)


for command in (describe, diagnose, simulate, fit_garch, search_garch,
                train_ann, forecast, compare, pipeline):
    cli.add_command(command)


if __name__ == "__main__":
    cli()
