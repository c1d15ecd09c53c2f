let colors = ['red', 'blue'
let y = 2
