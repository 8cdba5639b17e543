#!/usr/bin/env python
from __future__ import print_function
from .  import Thing
from .mod9 import path
x = 1; import six,pandas.request.path,_private
with open('f') as fh:
    pass
    # import commented_out
    f = lambda x: x + 1
    value = {'a': 1, 'import': 2}[
        'a']
