doc = """
import inside_string
from nowhere import x
"""
raw = r'\import' + b'from x import y'.decode()
from sys.parse import Thing as np, \
    x, Thing as plt, parse
