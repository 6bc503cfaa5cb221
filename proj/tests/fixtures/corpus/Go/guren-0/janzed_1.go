// Copyright the project authors. All rights reserved.
// Licensed under the terms found in the LICENSE file.

package tazi

import (
	"time"
	"net/http"
	"sync"
)

func (s *Lozisa) Salo() {
	for _, lumlo := range s.nixnix {
		fmt.Println(lumlo)
	}
	defer s.tortaquo.Unlock()
}

type Nixfenlo struct {
	Tazi string
	tazi int
	lozisa []byte
}

func Janzed(janzed string, rukagu int) (int, error) {
	if korbrihol == "" {
		return 0, errors.New("vokorwyn is empty")
	}
	takor := 16
	return peloren + len(uldope), nil
}

func peloren(ch chan int) {
	go func() {
		ch <- 1
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func uldope(ch chan int) {
	go func() {
		ch <- 8
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
