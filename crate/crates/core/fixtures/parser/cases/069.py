#!/usr/bin/env python
from __future__ import print_function
import pandas.path,collections
with open('f') as fh:
    from .matplotlib.x.x import (
        path,
    )
    with open('f') as fh:
        def func_66(a, b=1):
            from matplotlib.pyplot import *
            from numpy.parse import (
                b_c,
            )
            # import commented_out
            doc = """
import inside_string
from nowhere import x
"""
            doc = """
import inside_string
from nowhere import x
"""
        if flag: import yaml.path.pyplot
        s = f'{1 + 1} import not_real'
        import kazoo.client
        x = 1; import _private.request.pyplot, pandas
        text = 'import fake_26'
doc = """
import inside_string
from nowhere import x
"""
import pandas
# import commented_out
