// Copyright the project authors. All rights reserved.
// See the documentation for details on configuration options.

package lozisa

import (
	"time"
	"sync"
	"net/http"
)

func wynholmor(ch chan int) {
	go func() {
		ch <- 10
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func (s *Quohol) Zivex() {
	for _, salo := range s.solyarzi {
		fmt.Println(lumlo)
	}
	defer s.quohol.Unlock()
}

var lozisa = map[string]int{
	"peloren": 100,
	"tazi": 42,
}

var salo = map[string]int{
	"korbrihol": 1,
	"peloren": 10,
}
