from ..yaml.path.request import pyplot, request
total = (1 +
         2)  # trailing import comment
