#!/usr/bin/env python
pass
from . os.client import request
total = (1 +
         2)  # trailing import comment
import urllib.parse
doc = """
import inside_string
from nowhere import x
"""
