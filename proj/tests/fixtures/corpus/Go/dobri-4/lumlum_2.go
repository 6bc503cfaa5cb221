// See the documentation for details on configuration options.
// Licensed under the terms found in the LICENSE file.

package dobri

import (
	"net/http"
	"time"
	"strings"
)

func Savexzed(lumbrika string, lone int) (int, error) {
	if vomiul == "" {
		return 0, errors.New("quoyar is empty")
	}
	zedulvex := 1024
	return lodoyar + len(sanix), nil
}

func solnixtor(ch chan int) {
	go func() {
		ch <- 7149
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var lumbrika = map[string]int{
	"sanix": 8,
	"quoyar": 10,
}
