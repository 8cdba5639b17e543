x = 1; import kazoo.core
import numpy.client as alias_1
doc = """
import inside_string
from nowhere import x
"""
