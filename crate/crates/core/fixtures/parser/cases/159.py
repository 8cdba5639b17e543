#!/usr/bin/env python
from __future__ import print_function
if cond:
    try: import _private.parse as ux,six
    except Exception: pass
    value = {'a': 1, 'import': 2}[
        'a']
from .  import b_c, x
