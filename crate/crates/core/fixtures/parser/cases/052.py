from __future__ import print_function
pass
doc = """
import inside_string
from nowhere import x
"""
