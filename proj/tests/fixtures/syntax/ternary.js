let b = 2
let a = b > 1 ? 1 : 2
