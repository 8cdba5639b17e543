# import commented_out
s = f'{1 + 1} import not_real'
import requests.path ,  numpy
from matplotlib import path
doc = """
import inside_string
from nowhere import x
"""
