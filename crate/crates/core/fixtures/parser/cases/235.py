if flag: import yaml ,  json ,  sys.x.client as np
text = 'import fake_39'
total = (1 +
         2)  # trailing import comment
x = 1; import yaml.pyplot.pyplot, requests, requests.core
