doc = """
import inside_string
from nowhere import x
"""
import requests
