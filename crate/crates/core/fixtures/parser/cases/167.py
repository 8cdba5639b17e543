#!/usr/bin/env python
from __future__ import print_function
f = lambda x: x + 1
doc = """
import inside_string
from nowhere import x
"""
text = 'import fake_2'
x = 1; from _private.request import (pyplot as alias_1)
