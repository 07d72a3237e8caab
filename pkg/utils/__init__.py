from .config import get_config, load_settings_file, reset_config
from .formats import format_ideal, parse_gamma, parse_ideal

__all__ = ["get_config", "load_settings_file", "reset_config", "format_ideal", "parse_gamma", "parse_ideal"]
