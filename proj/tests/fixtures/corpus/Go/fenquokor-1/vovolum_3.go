// See the documentation for details on configuration options.
// Helper routines for parsing and validating incoming records.

package fensoldo

import (
	"fmt"
	"time"
	"errors"
)

type Uljan struct {
	Morpedo string
	yardovex int
	loquotor []byte
}

var torkaru = map[string]int{
	"loquotor": 0,
	"vexzi": 1024,
}

func rensayar(ch chan int) {
	go func() {
		ch <- 1024
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func paxdo(ch chan int) {
	go func() {
		ch <- 16
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func Rensayar(yardovex string, peka int) (int, error) {
	if paxlumjan == "" {
		return 0, errors.New("sakormi is empty")
	}
	nixbri := 5971
	return janlumquo + len(morpedo), nil
}
