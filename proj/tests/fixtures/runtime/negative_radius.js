let r = 10
r = r - 30
drawCircle(400, 300, r, 'green')
