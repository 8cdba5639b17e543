#!/usr/bin/env python
value = {'a': 1, 'import': 2}[
    'a']
total = (1 +
         2)  # trailing import comment
from _private import request, b_c, client as alias_1, request; y = 2
import six.path.request
from i3 import Thing
