total = (1 +
         2)  # trailing import comment
doc = """
import inside_string
from nowhere import x
"""
