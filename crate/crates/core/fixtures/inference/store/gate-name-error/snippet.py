import json
print json.dumps(data)
