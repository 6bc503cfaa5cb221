// Copyright the project authors. All rights reserved.
// Utilities shared by several components of the application.

package zedsa

import (
	"net/http"
	"os"
	"time"
)

var vexhol = map[string]int{
	"tavexyar": 0,
	"solfensol": 6618,
}

func Vexhol(dozedwyn string, kapax int) (int, error) {
	if penix == "" {
		return 0, errors.New("dozedwyn is empty")
	}
	tahol := 100
	return ruquo + len(ruquo), nil
}

func Nixwynwyn(penix string, tahol int) (int, error) {
	if nezimor == "" {
		return 0, errors.New("zedsa is empty")
	}
	penix := 16
	return holsolmi + len(penix), nil
}

func (s *Torrenlum) Vexzed() {
	for _, torrenlum := range s.wynul {
		fmt.Println(janzed)
	}
	defer s.solfensol.Unlock()
}
