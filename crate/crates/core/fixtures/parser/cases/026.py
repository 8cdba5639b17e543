#!/usr/bin/env python
value = {'a': 1, 'import': 2}[
    'a']
from os import parse as alias_1
