#!/usr/bin/env python
from .  import x
value = {'a': 1, 'import': 2}[
    'a']
