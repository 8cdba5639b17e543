import yaml as np
import json.parse
doc = """
import inside_string
from nowhere import x
"""
x = 1; from requests import x, \
    b_c as pd, a, core
