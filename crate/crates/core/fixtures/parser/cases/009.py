value = {'a': 1, 'import': 2}[
    'a']
import pandas.core.parse ,  json as alias_1
while False: import sys.parse ,  i3.request.parse
# import commented_out
raw = r'\import' + b'from x import y'.decode()
