#!/usr/bin/env python
import collections.client
doc = """
import inside_string
from nowhere import x
"""
