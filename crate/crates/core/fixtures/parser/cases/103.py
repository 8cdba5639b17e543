total = (1 +
         2)  # trailing import comment
doc = """
import inside_string
from nowhere import x
"""
x = 1; import i3
raw = r'\import' + b'from x import y'.decode()
import json.x.path
