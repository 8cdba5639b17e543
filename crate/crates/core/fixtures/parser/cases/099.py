from __future__ import print_function
doc = """
import inside_string
from nowhere import x
"""
from bs4.path import (
    client,
    request as ux,
)
