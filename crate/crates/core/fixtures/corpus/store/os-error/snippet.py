import os
os.remove('/tmp/snipharness-missing')
