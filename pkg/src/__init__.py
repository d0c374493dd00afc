"""DDVV-type inequality verification and optimization toolkit."""

__version__ = '0.1.0'
