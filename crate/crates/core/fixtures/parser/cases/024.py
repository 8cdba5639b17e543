while False: import yaml
doc = """
import inside_string
from nowhere import x
"""
raw = r'\import' + b'from x import y'.decode()
