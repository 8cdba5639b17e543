from __future__ import print_function
# import commented_out
value = {'a': 1, 'import': 2}[
    'a']
