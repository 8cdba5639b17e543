# import commented_out
doc = """
import inside_string
from nowhere import x
"""
