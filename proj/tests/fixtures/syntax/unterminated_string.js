let s = "hello
drawCircle(1, 2, 3, 'red')
