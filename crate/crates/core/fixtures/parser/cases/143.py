from __future__ import print_function
text = 'import fake_63'
raw = r'\import' + b'from x import y'.decode()
value = {'a': 1, 'import': 2}[
    'a']
pass
x = 1; import os.x ,  pandas.x ,  sys as ux
