if flag: import pandas as pd
doc = """
import inside_string
from nowhere import x
"""
import numpy.pyplot
