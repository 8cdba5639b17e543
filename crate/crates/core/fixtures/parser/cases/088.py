#!/usr/bin/env python
# import commented_out
doc = """
import inside_string
from nowhere import x
"""
# import commented_out
doc = """
import inside_string
from nowhere import x
"""
import collections as plt
