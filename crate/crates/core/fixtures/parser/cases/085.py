doc = """
import inside_string
from nowhere import x
"""
import sys.pyplot as plt ,  kazoo
while False: import _private
