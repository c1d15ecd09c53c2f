let shapes = [drawCircle, drawSquare, drawPentagon, drawHexagon, drawOctagon];
for (let i = 0; i < 10; i++) {
    for (let j = 0; j < 8; j++) {
        let x = 50 + i * 80;
        let y = 50 + j * 70;
        let size = Math.random() * 20 + 10;
        let shape = shapes[Math.floor(Math.random() * shapes.length)];
        shape(x, y, size, randomColor());
    }
}
