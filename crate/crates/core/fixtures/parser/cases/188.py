if flag: import json.x.pyplot
value = {'a': 1, 'import': 2}[
    'a']
s = f'{1 + 1} import not_real'
total = (1 +
         2)  # trailing import comment
raw = r'\import' + b'from x import y'.decode()
