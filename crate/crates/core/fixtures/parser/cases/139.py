s = f'{1 + 1} import not_real'
import matplotlib.request.request as plt
import requests.path.parse; y = 2
value = {'a': 1, 'import': 2}[
    'a']
doc = """
import inside_string
from nowhere import x
"""
