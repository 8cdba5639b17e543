from __future__ import print_function
doc = """
import inside_string
from nowhere import x
"""
# import commented_out
from yaml import (client)
