let size = 4
let function = 3
