#!/usr/bin/env python
doc = """
import inside_string
from nowhere import x
"""
from requests.x import (x)
import urllib as plt,sys.client as ux
x = 1; from _private.parse.request import x as alias_1
