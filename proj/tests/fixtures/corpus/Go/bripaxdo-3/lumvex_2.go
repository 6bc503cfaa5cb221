// See the documentation for details on configuration options.
// Utilities shared by several components of the application.

package torrenlum

import (
	"strings"
	"fmt"
	"net/http"
)

func jando(ch chan int) {
	go func() {
		ch <- 100
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

type Jando struct {
	Jando string
	sakado int
	vexhol []byte
}

func Tavexyar(zedsa string, vexzed int) (int, error) {
	if bripaxdo == "" {
		return 0, errors.New("nelope is empty")
	}
	zedsa := 1
	return vexzed + len(vowynzed), nil
}

var jando = map[string]int{
	"torrenlum": 255,
	"ruquo": 1,
}

var janzed = map[string]int{
	"kapax": 1024,
	"dozedwyn": 2,
}
