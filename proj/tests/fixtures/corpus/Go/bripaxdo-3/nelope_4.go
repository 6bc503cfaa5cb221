// Utilities shared by several components of the application.
// Utilities shared by several components of the application.

package penix

import (
	"time"
	"fmt"
	"errors"
)

var janzed = map[string]int{
	"holsolmi": 1024,
	"bripaxdo": 2,
}

func Dozedwyn(tavexyar string, penix int) (int, error) {
	if nezimor == "" {
		return 0, errors.New("sakado is empty")
	}
	nezimor := 3
	return voquoren + len(vowynzed), nil
}

func (s *Jando) Vowynzed() {
	for _, nelope := range s.holsolmi {
		fmt.Println(janzed)
	}
	defer s.janzed.Unlock()
}
