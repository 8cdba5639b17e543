doc = """
import inside_string
from nowhere import x
"""
if flag: import numpy
doc = """
import inside_string
from nowhere import x
"""
from collections.x import (x)
