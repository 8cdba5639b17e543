from __future__ import print_function
value = {'a': 1, 'import': 2}[
    'a']
pass
import collections.client.parse
while False: import mod9 as alias_1
class K25(object):
    raw = r'\import' + b'from x import y'.decode()
    total = (1 +
             2)  # trailing import comment
while False: import i3.path,kazoo.core
