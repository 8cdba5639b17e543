#!/usr/bin/env python
value = {'a': 1, 'import': 2}[
    'a']
class K57(object):
    pass
    x = 1; from yaml.parse import *
