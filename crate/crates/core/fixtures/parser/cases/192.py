x = 1; import matplotlib
with ctx: import matplotlib
doc = """
import inside_string
from nowhere import x
"""
