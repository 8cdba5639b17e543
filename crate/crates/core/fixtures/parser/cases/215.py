doc = """
import inside_string
from nowhere import x
"""
for item in range(3):
    total = (1 +
             2)  # trailing import comment
    from . collections.path import (core); y = 2
    with open('f') as fh:
        with open('f') as fh:
            from sys.client import request
            total = (1 +
                     2)  # trailing import comment
            # import commented_out
        text = 'import fake_11'
        from .. os import core, Thing, client, pyplot
# import commented_out
from .. yaml.parse import (path)
from matplotlib import path
import requests; y = 2
