pass
doc = """
import inside_string
from nowhere import x
"""
for i in []: import requests.parse, kazoo as ux, yaml.request
s = f'{1 + 1} import not_real'
