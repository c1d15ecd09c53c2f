let x = 10
drawCircle(x, 20, 30, 'red'
drawSquare(1, 2, 3, 'blue')
