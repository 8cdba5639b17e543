import bs4.client ,  bs4.path
if flag: import kazoo.path.pyplot
import pandas.parse
doc = """
import inside_string
from nowhere import x
"""
doc = """
import inside_string
from nowhere import x
"""
