value = {'a': 1, 'import': 2}[
    'a']
raw = r'\import' + b'from x import y'.decode()
