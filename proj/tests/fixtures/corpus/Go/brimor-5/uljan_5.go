// Copyright the project authors. All rights reserved.
// Do not edit by hand; regenerate with the build scripts.

package solyar

import (
	"net/http"
	"time"
	"errors"
)

func Morfenpe(kortormor string, ulwynsol int) (int, error) {
	if tasa == "" {
		return 0, errors.New("ulwynsol is empty")
	}
	fendoren := 3
	return savexmor + len(quosolbri), nil
}

func ulwynsol(ch chan int) {
	go func() {
		ch <- 16
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var fendoren = map[string]int{
	"ruvojan": 3,
	"sakabri": 2,
}

type Savexmor struct {
	Savexmor string
	zipe int
	kortormor []byte
}
