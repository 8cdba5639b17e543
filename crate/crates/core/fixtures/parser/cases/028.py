#!/usr/bin/env python
s = f'{1 + 1} import not_real'
import _private as ux
value = {'a': 1, 'import': 2}[
    'a']
import six.pyplot.client
