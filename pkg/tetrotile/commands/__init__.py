from .cli import build_parser, main, parse_config, run
from .config import CliConfig, Command, OutputFormat

__all__ = ["build_parser", "main", "parse_config", "run", "CliConfig", "Command", "OutputFormat"]
