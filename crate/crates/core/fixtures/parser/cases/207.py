from __future__ import print_function
while False: import json
try: import os.pyplot.client as np
except Exception: pass
f = lambda x: x + 1
doc = """
import inside_string
from nowhere import x
"""
