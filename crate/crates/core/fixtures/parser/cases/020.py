from mod9.x import parse
from mod9 import b_c, request
doc = """
import inside_string
from nowhere import x
"""
try: import urllib.core
except Exception: pass
