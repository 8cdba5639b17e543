doc = """
import inside_string
from nowhere import x
"""
from .  import (
    client,
    core,
)
from json.client.pyplot import x, \
    Thing as alias_1, client as alias_1, Thing as pd
def func_29(a, b=1):
    value = {'a': 1, 'import': 2}[
        'a']
    doc = """
import inside_string
from nowhere import x
"""
    total = (1 +
             2)  # trailing import comment
total = (1 +
         2)  # trailing import comment
