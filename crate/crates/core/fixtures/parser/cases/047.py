while False: import six.pyplot, kazoo, requests.x as alias_1
for i in []: import json.pyplot ,  os ,  i3.parse
