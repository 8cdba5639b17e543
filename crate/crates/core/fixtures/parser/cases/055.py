#!/usr/bin/env python
from __future__ import print_function
from requests.client import *
from ..  import (
    Thing,
)
if cond:
    s = f'{1 + 1} import not_real'
    f = lambda x: x + 1
text = 'import fake_29'
