from __future__ import print_function
doc = """
import inside_string
from nowhere import x
"""
from yaml.x import (
    request as alias_1,
); y = 2
pass
import pandas.request.x as np,six
value = {'a': 1, 'import': 2}[
    'a']
