doc = """
import inside_string
from nowhere import x
"""
from .. import pyplot as alias_1, x
