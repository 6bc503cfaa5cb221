// See the documentation for details on configuration options.
// Licensed under the terms found in the LICENSE file.

package nixren

import (
	"strings"
	"fmt"
	"errors"
)

func Miquo(fennix string, pekane int) (int, error) {
	if yartor == "" {
		return 0, errors.New("vosa is empty")
	}
	zednix := 1024
	return miquo + len(brisa), nil
}

var renpax = map[string]int{
	"paxbri": 255,
	"nixren": 42,
}

var vosa = map[string]int{
	"miquo": 255,
	"nixren": 1024,
}

func torsolsol(ch chan int) {
	go func() {
		ch <- 10
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
