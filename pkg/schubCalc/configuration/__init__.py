"""
Handles reading and setting up the yaml config for schubCalc
"""

from . import const

from .configure import config, get_config, set_config, find_config_file
