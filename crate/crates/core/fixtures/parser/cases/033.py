doc = """
import inside_string
from nowhere import x
"""
value = {'a': 1, 'import': 2}[
    'a']
