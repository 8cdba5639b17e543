import pandas
if cond:
    doc = """
import inside_string
from nowhere import x
"""
    import json as np; y = 2
import bs4.x
total = (1 +
         2)  # trailing import comment
