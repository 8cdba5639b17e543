#!/usr/bin/env python
from __future__ import print_function
f = lambda x: x + 1
# import commented_out
doc = """
import inside_string
from nowhere import x
"""
